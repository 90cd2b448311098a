"""Setup file for the PyPi packaging"""

# Third-party
from setuptools import find_packages, setup

# --------------------------------------------------------------------------------
# > Variables
# --------------------------------------------------------------------------------
VERSION = "1.0.1"
packages = find_packages(exclude=["tests", "tests.*"])
with open("README.md", "r", encoding="utf-8") as f:
    long_description = f.read()

# --------------------------------------------------------------------------------
# > Functions
# --------------------------------------------------------------------------------
setup(
    # General
    name='critical_popular_matching',
    version=VERSION,
    license='MIT',
    # Description
    description='Popular edges in marriage instances with critical vertices',
    long_description=long_description,
    long_description_content_type="text/markdown",
    # Packages
    packages=packages,
    python_requires='>=3.8',
    install_requires=[
        'networkx>=2.5',
        'numpy>=1.19',
    ],
    entry_points={
        'console_scripts': [
            'critical-popular-matching=critical_popular_matching.cli:main',
        ],
    },
    # Other info
    keywords=["matching", "popular", "stable marriage", "gale-shapley", "critical", "lower quotas"],
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python :: 3',
    ],
)
