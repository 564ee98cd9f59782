try:
    from ._hkdfkit import *  # installed layout
except ImportError:
    from _hkdfkit import *  # build-tree layout
