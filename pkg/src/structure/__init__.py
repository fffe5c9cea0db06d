"""Plane subgraphs, faces and structural checks"""
