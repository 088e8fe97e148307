# coding=utf-8
"""Setup package 'focaltorus'."""

from setuptools import setup, find_packages


with open('README.md') as file:
    long_description = file.read()

setup(
    name="focaltorus",
    author="focaltorus developers",
    description="Exact focal decomposition, Brillouin zones and spectra of "
                "flat tori",
    long_description=long_description,
    long_description_content_type="text/markdown",
    package_dir={'': 'src'},
    packages=find_packages(where='src'),
    include_package_data=True,
    python_requires=">=3.8",
    install_requires=["decimalfp>=0.11.4", "numpy>=1.20"],
    tests_require=["pytest"],
    entry_points={
        'console_scripts': ['focaltorus=focaltorus.cli:main'],
        },
    license='BSD',
    keywords='lattice flat torus brillouin zone voronoi focal decomposition '
             'length spectrum isometry',
    platforms='all',
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: BSD License",
        "Operating System :: OS Independent",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: Implementation :: CPython",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Topic :: Software Development :: Libraries :: Python Modules"
    ]
)
