"""
falsilab: shattering, VC and Popper dimensions, growth functions and surprise
measures computed exactly over finite hypothesis classes.
"""

from config.settings import APP_VERSION

__version__ = APP_VERSION
