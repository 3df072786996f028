"""diagctl: conjugacy widths and orbital diameters of simple diagonal groups."""

__version__ = "0.1.0"
