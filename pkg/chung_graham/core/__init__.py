"""Core numeration system: base sequences, the rule of expansion and the codec"""
