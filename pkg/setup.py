from setuptools import setup, find_packages

try:
    with open('README.md') as f:
        readme = f.read()
except FileNotFoundError:
    readme = ""

setup(name='p1series',
      version='1.0.0',
      description='Exact Laurent, tau-function and pole computations for the first Painleve equation',
      license='MIT',

      long_description=readme,
      long_description_content_type="text/markdown",
      entry_points={"console_scripts": ["p1series = p1series.cli.main:run"]},
      classifiers=[
          'Development Status :: 4 - Beta',
          'Intended Audience :: Science/Research',
          'Natural Language :: English',
          'Operating System :: OS Independent',
          'License :: OSI Approved :: MIT License',
          'Programming Language :: Python :: 3',
          'Topic :: Scientific/Engineering :: Mathematics',
      ],

      keywords='painleve, laurent series, tau function, weierstrass, multiprecision',
      packages=find_packages(exclude=['tests', 'tests.*', 'examples', 'examples.*']),
      python_requires=">=3.8",
      package_data={
          'p1series': ['config/*.properties']
      },
      install_requires=[
          'mpmath>=1.3.0',
          'numpy>=1.24',
          'PyHamcrest>=1.9.0',
          'simpleeval>=0.9.13',
      ],
      extras_require={
          'test': ['pytest~=7.3.1'],
      },
      zip_safe=False)
