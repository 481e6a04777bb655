import setuptools

setuptools.setup(
    name="gyro_cayley",
    version="0.0.1",
    scripts=['bin/gyro-cayley'],
    description='Finite gyrogroups, their L- and R-Cayley graphs, and '
                'executable checks of the theorems relating them.',
    long_description=open('README.md').read(),
    long_description_content_type='text/markdown',
    packages=setuptools.find_packages(),
    package_data={'gyro_cayley': ['data/*.gyro']},
    install_requires=[
        'pyyaml',
        # 'pylint==2.15.0',
        # 'coverage==5.5',
        # 'coverage-lcov==0.2.4',
        # 'pytest==6.2.5',
        'tabulate',
        'numpy',
        'networkx',
    ],
    classifiers=[
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Development Status :: 0 - Pre-Alpha",
        "Environment :: Console",
        "Intended Audience :: Science/Research",
        "License :: None",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
