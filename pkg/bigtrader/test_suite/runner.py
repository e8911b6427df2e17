import os
import sys
import unittest
"""
This file is used to run the test suite. It collects every ``test_*.py`` module under ``bigtrader/test_suite/tests``
and exits with 0 when all of them pass, 1 otherwise.
"""

TESTS_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'tests')
PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))


def run_suite(verbosity: int = 1) -> bool:
    loader = unittest.TestLoader()
    tests = loader.discover(TESTS_DIR, pattern='test_*.py', top_level_dir=PROJECT_ROOT)
    test_runner = unittest.TextTestRunner(verbosity=verbosity)
    return test_runner.run(tests).wasSuccessful()


if __name__ == "__main__":
    sys.exit(0 if run_suite(2 if '-v' in sys.argv[1:] else 1) else 1)

# To run the test suite, make sure your terminal is in the root directory of the project (the one holding bigtrader/)
# Then, in your terminal, run 'python -m bigtrader.test_suite.runner'. This runs this file as a module of the entire
# project, allowing imports to function properly
