from setuptools import setup, find_packages

setup(
    name="iterated-sequences",
    version="0.1.0",
    packages=find_packages(exclude=["tests"]),
    install_requires=[
        "networkx>=3.0",
        "python-dotenv>=1.0.0",
        "pydantic>=2.0.0",
    ],
    extras_require={
        "test": [
            "pytest>=7.4.0",
            "pytest-asyncio>=0.23.0",
        ]
    },
    entry_points={
        "console_scripts": [
            "itseq=src.main:main",
        ]
    },
)
