"""Instance file formats and loading"""
