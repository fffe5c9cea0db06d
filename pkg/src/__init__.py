"""PlaneDraw: plane subgraphs of simple drawings of complete graphs"""

__version__ = "0.1.0"
__author__ = "PlaneDraw Team"
