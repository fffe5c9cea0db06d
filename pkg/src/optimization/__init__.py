"""Maximum plane subgraphs: face DP and exact search"""
