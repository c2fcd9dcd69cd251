"""
Certified evaluation of D-finite functions by binary splitting.
"""
