import setuptools

with open("README.md", "r") as f:
    long_description = f.read()

setuptools.setup(
    name="spin-chain-memory",
    version="0.1.0",
    description="Non-Markovianity, divisibility and process tomography of a qubit coupled to a spin chain.",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(exclude=["examples", "examples.*"]),
    install_requires=[
        "numpy",
        "scipy",
        "pandas",
        "pyyaml",
        "tqdm",
        "joblib",
    ],
    package_data={"spin_chain_memory": ["config.yaml"]},
    include_package_data=True,
    entry_points={
        "console_scripts": [
            "spin-chain-memory=spin_chain_memory.experiments.cli:main",
        ],
    },
    python_requires=">=3.11",
    classifiers=[
        "Programming Language :: Python :: 3",
        "Operating System :: OS Independent",
    ],
)
