from setuptools import find_packages, setup

setup(
    name="grunskybounds",
    version="0.1.0",
    package_dir={"": "src"},
    packages=find_packages(where="src"),
    install_requires=["PyYAML>=6.0", "numpy>=1.22", "scipy>=1.8", "mpmath>=1.2", "pybnb>=0.6.2"],
)
