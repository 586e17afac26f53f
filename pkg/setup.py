from setuptools import setup, find_packages

setup(
    name="ternary-logic-toolkit",
    version="0.1",
    packages=find_packages(exclude=["tests", "tests.*"]),
    py_modules=["main"],
    install_requires=[
        "python-dotenv>=1.0.0",
        "python-json-logger>=2.0.7",
        "graphviz>=0.20",
    ],
    extras_require={
        "test": [
            "pytest>=8.0.1",
            "pytest-cov>=4.1.0",
            "pytest-mock>=3.12.0",
        ],
    },
    entry_points={
        "console_scripts": [
            "ternary=main:main",
        ],
    },
)
