"""Command-line interface modules"""
