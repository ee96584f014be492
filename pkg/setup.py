from setuptools import setup, find_packages
import os


def get_data_files(data_dir, prefix=''):
    file_dict = {}
    for root, dirs, files in os.walk(data_dir, topdown=False):
        for name in files:
            if prefix+root not in file_dict:
                file_dict[prefix+root] = []
            file_dict[prefix+root].append(os.path.join(root, name))
    return [(k, v) for k, v in file_dict.items()]


setup(
    name='homkit',
    version='0.1.0',
    description='Graph coloring complexes Hom(G, K_n): coverings, collapses, nerves and integral homology',
    packages=find_packages(include=['homkit', 'homkit.*']),
    python_requires='>=3.10',
    install_requires=[
        'networkx>=2.8',
        'numpy',
        'scipy',
        'sympy>=1.12',
        'omegaconf>=2.3',
        'tqdm',
        'jsonlines',
    ],
    extras_require={
        'test': ['pytest'],
    },
    entry_points={
        'console_scripts': ['homkit=homkit.cli.main:main'],
    },

    data_files=[
        *get_data_files('config', 'homkit/'),
    ]

)
