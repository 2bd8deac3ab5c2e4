# -*- coding: utf-8 -*-

import sys
from setuptools import setup, find_namespace_packages

# ONLY LIST DEPENDENCIES THAT ARE DIRECTLY USED BY THIS PACKAGE (no inherited dependencies from
# e.g. qudi-core)
unix_dep = [
    'wheel>=0.37.0',
    'qudi-core>=1.0.0,<1.7',
    'numpy>=1.21.3',
    'scipy>=1.7.1',
    'PySide2==5.15.2.1',
]

windows_dep = [
    'wheel>=0.37.0',
    'qudi-core>=1.0.0,<1.7',
    'numpy>=1.21.3',
    'scipy>=1.7.1',
    'PySide2==5.15.2.1',
]

test_dep = [
    'pytest>=6.2',
    'hypothesis>=6.14',
    'sympy>=1.8',
    'mpmath>=1.2',
]

# The version number of this package is derived from the content of the "VERSION" file located in
# the repository root.
with open('VERSION', 'r') as file:
    version = file.read().strip()

with open('README.md', 'r') as file:
    long_description = file.read()

setup(
    name='qudi-kerr-newman-epr',
    version=version,
    packages=find_namespace_packages(where='src'),
    package_dir={'': 'src'},
    package_data={'': ['LICENSE', 'LICENSE.LESSER', 'README.md', 'VERSION', 'default.cfg'],
                  },
    description='Wigner rotation and EPR/CHSH correlations of spin pairs orbiting a '
                'Kerr-Newman black hole, as a library, CLI and qudi logic module.',
    long_description=long_description,
    long_description_content_type='text/markdown',
    keywords=['qudi',
              'general relativity',
              'kerr-newman',
              'wigner rotation',
              'epr',
              'chsh',
              'bell inequality',
              'quantum information',
              ],
    license='LGPLv3',
    install_requires=windows_dep if sys.platform == 'win32' else unix_dep,
    extras_require={'test': test_dep},
    entry_points={'console_scripts': ['kerr-newman-epr = qudi.kerr_newman.cli:main']},
    python_requires='~=3.8',
    zip_safe=False
)
