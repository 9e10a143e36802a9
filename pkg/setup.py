from setuptools import setup, find_packages

setup(
    name="zetalab-toolkit",
    version="0.1.0",
    packages=find_packages(exclude=["tests", "tests.*"]),
    install_requires=[
        "pandas>=1.3.0",
        "numpy>=1.21.0",
        "matplotlib>=3.4.0",
        "seaborn>=0.11.0",
        "tqdm>=4.65.0",
    ],
    extras_require={
        "test": ["pytest>=6.2.0", "mpmath>=1.2.0"],
    },
    entry_points={
        "console_scripts": ["zetalab=zetalab.cli:main"],
    },
)
