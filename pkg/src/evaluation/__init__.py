"""Benchmark harness and property suites"""
