"""
Matrix/channel documents and seeded instance generators.
"""

from .documents import MatrixFile, dump_document, load_matrix_file, parse_matrix_file, write_document
from .generators import RandomInstanceGenerator, generate

__all__ = [
    "MatrixFile",
    "dump_document",
    "load_matrix_file",
    "parse_matrix_file",
    "write_document",
    "RandomInstanceGenerator",
    "generate",
]
