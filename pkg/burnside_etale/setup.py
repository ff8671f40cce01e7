from setuptools import setup, find_packages
from pathlib import Path

setup_directory = Path(__file__).parent

setup(
    description='burnside-etale: the étale fundamental groupoid of the Burnside ring of a finite group',
    classifiers=[
        'Intended Audience :: Education',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python',
        'Operating System :: OS Independent',
    ],
    scripts=[
        'burnside_etale/scripts/run.py',
    ],
    name="burnside_etale",
    version='0.1.0',
    python_requires='>=3.10',
    long_description_content_type='text/markdown',
    packages=find_packages(),
    install_requires=[
        "colorama",
        "regex",
        "numpy",
        "pandas",
        "networkx",
    ],
    extras_require={
        'dev': [
            'pytest',
        ],
    }
)
