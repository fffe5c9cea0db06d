"""Drawing and instance generators"""
