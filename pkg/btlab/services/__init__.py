"""
Computational services: each module owns one area of the workbench and is pure apart from logging.
"""
