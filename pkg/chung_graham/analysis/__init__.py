"""Block structure and brute-force verification of digit strings"""
