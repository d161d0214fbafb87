# __init__.py
# Package marker for equichordal_lab.
# The distribution is named equichordal-lab (dashes); the import package uses underscores.

__version__ = "0.1.0"
