import json
import os

import pandas as pd

import bigtrader.config as config


def write_json_file(data, filename):
    """
    Opens the file with the given name and writes all the given data to it as tab-indented JSON. Parent directories
    are created as needed.
    """
    os.makedirs(os.path.dirname(os.path.abspath(filename)), exist_ok=True)
    with open(filename, 'w') as f:
        json.dump(data, f, indent='\t')


def read_json_file(filename):
    with open(filename, 'r') as f:
        return json.load(f)


def write_csv_file(frame: pd.DataFrame, filename):
    """
    Writes a table without its index. Floats keep config.FLOAT_FORMAT significant digits and lines always end in a
    bare newline, so identical tables give byte-identical files on every platform.
    """
    os.makedirs(os.path.dirname(os.path.abspath(filename)), exist_ok=True)
    frame.to_csv(filename, index=False, float_format=config.FLOAT_FORMAT, lineterminator='\n')
