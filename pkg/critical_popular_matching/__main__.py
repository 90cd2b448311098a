# coding: utf-8
"""Allows 'python -m critical_popular_matching'"""

from .cli import main

if __name__ == "__main__":
    main()
