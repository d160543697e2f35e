"""Integer-sequence workbench: generators, arithmetic functions, sieves, bases and searches."""

__version__ = "0.1.0"
