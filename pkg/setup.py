import re

from setuptools import setup, find_packages

with open("requirements.txt") as f:
    install_requires = f.read().strip().split("\n")

# Get version from __version__ variable in ia_nilpotent/__init__.py
with open("ia_nilpotent/__init__.py") as f:
    version = re.search(r'^__version__ = "([^"]+)"', f.read(), re.M).group(1)

setup(
    name="ia_nilpotent",
    version=version,
    description="IA-automorphisms, class-preserving automorphisms and Schur-type bounds for finite nilpotent groups",
    author="ia_nilpotent Contributors",
    packages=find_packages(exclude=("tests",)),
    zip_safe=False,
    include_package_data=True,
    package_data={"ia_nilpotent": ["groups/doctype/*/*.json", "groups/fixtures/*.pc"]},
    install_requires=install_requires,
    python_requires=">=3.10",
    entry_points={"console_scripts": ["ia-nilpotent = ia_nilpotent.cli:main"]},
    classifiers=[
        "Development Status :: 4 - Beta",
        "Environment :: Console",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
