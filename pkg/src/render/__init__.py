"""SVG output for coordinate-backed drawings"""
