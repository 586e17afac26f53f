import os
import sys

# Add src directory to Python path
current_dir = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, current_dir)

from src.handlers.command_handler import run  # noqa: E402
from src.utils.logger import CustomLogger  # noqa: E402

# Initialize custom logger
logger = CustomLogger("Ternary")


def main() -> int:
    try:
        return run(sys.argv[1:])
    except KeyboardInterrupt:
        logger.info("Interrupted")
        return 130


if __name__ == "__main__":
    sys.exit(main())
