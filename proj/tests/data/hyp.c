# hyperbolic couplings, c^2 - h^2 = 1
ch 5/4 3/4
ch 5/3 4/3
ch 13/12 5/12
