"""Rotation systems, crossing predicates and the K4 table"""
