"""
    setup project:
        pip install -e .

    usage:
        from Spectra.xxx import xxx
        spectra emission --model double --dg1 -1 --dg2 1
"""
from setuptools import find_packages, setup


if __name__ == "__main__":
    setup(
        name="pbg_spectra",
        packages=find_packages(include=["Spectra", "Spectra.*"]),
        version="0.1.0",
        license="Apache 2.0",
        description="Spontaneous emission, probe susceptibility and memory-kernel dynamics "
                    "of an atom in a photonic band gap reservoir",
        long_description="Closed-form spectra cross-validated by a product-integration Volterra solver",
        long_description_content_type="text/markdown",
        data_files=[(".", ["README.md"])],
        keywords=["quantum optics", "photonic band gap", "non-Markovian"],
        python_requires=">=3.8",
        install_requires=["numpy", "scipy", "loguru", "rich", "termcolor", "tqdm"],
        entry_points={"console_scripts": ["spectra = Spectra.launch:main"]},
    )
