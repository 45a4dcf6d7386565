"""
Groups Module - finite groups, their automorphisms and theorem checks
"""
