from .operators import alpha, apply_perm, beta, gamma, rotate

__all__ = ['rotate', 'alpha', 'beta', 'gamma', 'apply_perm']
