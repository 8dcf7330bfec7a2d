"""Report generation for verification runs and sequence tables"""
