#!/usr/bin/env python3
"""
p1series runner

Command line access to the series library without installing the package:

    python run_series.py laurent --terms 30
    python run_series.py pentagon --table gamma --digits 23
    python run_series.py verify --g2 1/2 --lambda 1 --g3 1/3 --terms 100
"""
import sys

from p1series.cli.main import main

if __name__ == '__main__':
    sys.exit(main())
