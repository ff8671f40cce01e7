# Root-level manifest mirroring burnside_etale/setup.py so the package can be
# installed from the repository root; the package sources live in burnside_etale/.
from setuptools import setup, find_packages

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
        'burnside_etale/burnside_etale/scripts/run.py',
    ],
    name="burnside_etale",
    version='0.1.0',
    python_requires='>=3.10',
    long_description_content_type='text/markdown',
    package_dir={'': 'burnside_etale'},
    packages=find_packages(where='burnside_etale'),
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
