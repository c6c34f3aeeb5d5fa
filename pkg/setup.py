#!/usr/bin/env python3
import pathlib
import re
import sys

from setuptools import find_packages, setup

WORK_DIR = pathlib.Path(__file__).parent

# Check python version
MINIMAL_PY_VERSION = (3, 8)
if sys.version_info < MINIMAL_PY_VERSION:
    raise RuntimeError('polygrpd works only with Python {}+'.format('.'.join(map(str, MINIMAL_PY_VERSION))))


def get_version():
    """
    Read version

    :return: str
    """
    txt = (WORK_DIR / 'polygrpd' / '__init__.py').read_text('utf-8')
    try:
        return re.findall(r"^__version__ = '([^']+)'\r?$", txt, re.M)[0]
    except IndexError:
        raise RuntimeError('Unable to determine version.')


def get_description():
    """
    Read full description from 'README.rst'

    :return: description
    :rtype: str
    """
    with open('README.rst', 'r', encoding='utf-8') as f:
        return f.read()


setup(
    name='polygrpd',
    version=get_version(),
    packages=find_packages(exclude=('tests', 'tests.*', 'examples', 'examples.*', 'docs',)),
    license='MIT',
    python_requires='>=3.8',
    description='Poly-Poisson structures, their reduction and their integration to poly-symplectic groupoids',
    long_description=get_description(),
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    install_requires=[
        'numpy>=1.20',
        'scipy>=1.6',
    ],
    extras_require={
        'fast': [
            'ujson>=1.35',
            'python-rapidjson>=0.7.0',
        ],
    },
    entry_points={
        'console_scripts': [
            'polygrpd = polygrpd.cli:main',
        ],
    },
    include_package_data=False,
)
