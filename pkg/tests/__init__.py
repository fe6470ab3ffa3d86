"""
rescale - decide rescalings, compare minors, recover isometries.
"""
