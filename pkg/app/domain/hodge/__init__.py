"""
Hodge domain: orthogonal split of sampled fields into gradient and
divergence-free parts
"""
