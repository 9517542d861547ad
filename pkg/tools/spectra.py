"""
    a script to run one scenario or reproduce a figure
        python tools/spectra.py emission --preset fig2b_1 --out fig2b_1.csv
"""
import sys

from Spectra.launch import main


if __name__ == "__main__":
    sys.exit(main())
