# -*- coding: utf-8 -*-

from setuptools import setup, find_packages, Command
import os

with open('README.md') as f:
    readme = f.read()

exec(open('coxaut/_version.py').read())

scripts = ['bin/coxaut_run.py']


class CleanCommand(Command):
    """Custom clean command to tidy up the project root."""
    user_options = []
    def initialize_options(self):
        pass
    def finalize_options(self):
        pass
    def run(self):
        os.system('rm -vrf ./build ./dist ./*.pyc ./*.tgz ./*.egg-info')

setup(
    name='coxaut',
    version=__version__,
    description='Automorphism groups of graded rings and Mori dream spaces in exact arithmetic',
    long_description=readme,
    long_description_content_type='text/markdown',
    scripts=scripts,
    install_requires=['numpy', 'pyyaml', 'sympy>=1.14', 'pplpy', 'PyNormaliz'],
    packages=find_packages(exclude=('tests', 'docs')),
    include_package_data=True,
    cmdclass={'clean': CleanCommand}
)
