import os

import setuptools

NAME = "fplus_lda"
VERSION = "0.3.0"
description = "F+tree Gibbs sampling and token-passing parallel training for LDA"

setup_requires = ["setuptools>=41.0.0"]

install_requires = [
    "numpy>=1.17.0",
    "scipy>=1.4.0",
    "jsonschema>=3.0.0",
    "tqdm>=4.19.2",
    "prettytable>=2.0.0",
]

package_root = os.path.abspath(os.path.dirname(__file__))
readme_filename = os.path.join(package_root, "README.md")
with open(readme_filename, encoding="utf-8") as readme_file:
    readme = readme_file.read()

setuptools.setup(
    name=NAME,
    version=VERSION,
    description=description,
    long_description=readme,
    long_description_content_type="text/markdown",
    packages=[
        package
        for package in setuptools.PEP420PackageFinder.find()
        if package.startswith(NAME)
    ],
    entry_points={
        "console_scripts": ["fplus-lda=fplus_lda.cli.main:main"],
    },
    namespace_packages=(),
    license="MIT Licence",
    platforms="Posix; MacOS X; Windows",
    include_package_data=True,
    install_requires=install_requires,
    setup_requires=setup_requires,
    python_requires=">=3.7",
    scripts=[],
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3.7",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Topic :: Scientific/Engineering :: Information Analysis",
        "Topic :: Software Development :: Libraries :: Python Modules",
    ],
    zip_safe=False,
)
