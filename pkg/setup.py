from setuptools import find_packages, setup
from typing import List

HYPHEN_E_DOT = '-e .'

def get_requirements(file_path: str) -> List[str]:
    '''
    This function will return the list of requirements
    '''
    requirements = []
    with open(file_path) as file_obj:
        requirements = file_obj.readlines()
        requirements = [req.strip() for req in requirements]

        if HYPHEN_E_DOT in requirements:
            requirements.remove(HYPHEN_E_DOT)
    return [req for req in requirements if req and not req.startswith('pytest')]

setup(
    name='burnside_beta',
    version='0.1.0',
    author='Meena',
    author_email='meenuperiasamy3030@gmail.com',
    description='Burnside ring, table of marks and cokernels of the linearization map',
    packages=find_packages(exclude=['tests', 'tests.*']),
    install_requires=get_requirements('requirements.txt'),
    python_requires='>=3.9',
    entry_points={
        'console_scripts': [
            'burnside-beta=src.cli:main',
        ],
    },
)
