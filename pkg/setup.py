from setuptools import (setup,
                        find_packages)

import holoprec
from holoprec.config import PROJECT_NAME

setup(name=PROJECT_NAME,
      version='0.0.0',
      description=holoprec.__doc__,
      long_description=open('README.rst').read(),
      license='MIT',
      classifiers=[
          'Development Status :: 3 - Alpha',
          'Environment :: Console',
          'Intended Audience :: Science/Research',
          'License :: OSI Approved :: MIT License',
          'Programming Language :: Python :: 3.8',
          'Programming Language :: Python :: 3.9',
          'Programming Language :: Python :: 3.10',
          'Programming Language :: Python :: 3.11',
          'Programming Language :: Python :: Implementation :: CPython',
          'Operating System :: POSIX',
          'Operating System :: MacOS :: MacOS X',
          'Operating System :: Microsoft :: Windows',
          'Topic :: Scientific/Engineering :: Mathematics',
      ],
      keywords=['binary splitting', 'D-finite functions',
                'arbitrary precision'],
      packages=find_packages(exclude=('tests',)),
      python_requires='>=3.8',
      install_requires=[
          'click>=7.0',  # command-line interface
          'PyYAML>=5.1',  # settings loading
          'pandas>=1.0.0',  # benchmark records tables
          'numpy>=1.17.0',  # eigenvalue hints, scaling fits
          'mpmath>=1.1.0',  # multiprecision eigenvalue hints
      ],
      setup_requires=['pytest-runner>=5.2'],
      tests_require=[
          'pytest>=6.2.0',
          'pytest-cov>=2.10.0',
          'pytest-repeat>=0.9.0',
          'hypothesis>=5.0.0',
      ])
