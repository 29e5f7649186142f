from setuptools import setup

__version__ = "0.1"
__author__ = 'kloc developers'

setup(
    name='kloc',
    version=__version__,
    description="Exact Jordan forms and local K-classes of matrices over the Gaussian rationals",
    keywords='openmdao_command openmdao jordan k-theory exact linear algebra gaussian rationals',
    author=__author__,
    classifiers=[
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: Apache Software License',
        'Natural Language :: English',
        "Operating System :: OS Independent",
        'Topic :: Scientific/Engineering :: Mathematics',
        'Programming Language :: Python :: 3',
    ],
    python_requires='>=3.7',
    install_requires=[
        'openmdao>=3.10.0',
        'numpy',
    ],
    extras_require={
        'test': [
            'hypothesis',
        ]
    },
    packages=[
        'kloc',
        'kloc.tests',
    ],
    entry_points={
        'console_scripts': [
            'kloc=kloc.cmd:kloc_cmd'
        ],
        'openmdao_command': [
            'kloc=kloc.cmd:_kloc_setup'
        ],
    },
    include_package_data=True,
)
