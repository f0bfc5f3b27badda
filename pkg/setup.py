PROJECT = 'plumb'
VERSION = '0.1'

from setuptools import setup, find_packages

description = "Combinatorics of symplectic plumbings: GS criterion, blow-ups, open books and torus bundle words"
try:
    long_description = open('README.md', 'rt').read()
except IOError:
    long_description = description

setup(
    name=PROJECT,
    version=VERSION,

    description=description,
    long_description=long_description,

    platforms=['Any'],

    scripts=[],

    provides=[],
    install_requires=['straight.plugin', 'networkx>=2.8'],
    zip_safe=False,

    namespace_packages=[],
    packages=find_packages(exclude=['examples', 'examples.*']),

    package_data = {
        '': ['data/*']
    },

    entry_points={
        'console_scripts': [
            'plumb = plumb.cli:main'
            ],
        },

    classifiers=['Development Status :: 3 - Alpha',
                 'Programming Language :: Python',
                 'Programming Language :: Python :: 3',
                 'Intended Audience :: Science/Research',
                 'Topic :: Scientific/Engineering :: Mathematics',
                 'Environment :: Console',
                 ],

    )
