"""Uncrossed rays and maximal augmentation"""
