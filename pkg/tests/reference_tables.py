"""Reference CDF values at fixed query points, three decimals each.

Used both as direct spot checks of the family formulas and as the query
points for band-containment checks.
"""

CLAYTON_TABLE = {
    0.5: [
        (0.58, 0.12, 0.097), (0.54, 0.47, 0.302), (0.07, 0.50, 0.056),
        (0.21, 0.59, 0.162), (0.18, 0.42, 0.118), (0.42, 0.52, 0.268),
        (0.73, 0.61, 0.475), (0.07, 0.96, 0.069), (0.69, 0.85, 0.602),
        (0.28, 0.72, 0.233),
    ],
    2.0: [
        (0.96, 0.29, 0.289), (0.16, 0.45, 0.152), (0.67, 0.75, 0.576),
        (0.22, 0.47, 0.203), (0.12, 0.55, 0.118), (0.85, 0.80, 0.716),
        (0.46, 0.42, 0.326), (0.83, 0.22, 0.217), (0.65, 0.26, 0.248),
        (0.11, 0.30, 0.103),
    ],
    6.0: [
        (0.32, 0.40, 0.307), (0.85, 0.65, 0.638), (0.31, 0.70, 0.309),
        (0.51, 0.60, 0.484), (0.89, 0.14, 0.139), (0.80, 0.66, 0.637),
        (0.24, 0.87, 0.239), (0.10, 0.13, 0.096), (0.31, 0.08, 0.079),
        (0.65, 0.53, 0.509),
    ],
}

FRANK_TABLE = {
    -2.0: [
        (0.48, 0.25, 0.075), (0.12, 0.80, 0.077), (0.35, 0.68, 0.189),
        (0.73, 0.21, 0.119), (0.74, 0.44, 0.279), (0.14, 0.67, 0.066),
        (0.56, 0.81, 0.418), (0.98, 0.21, 0.202), (0.29, 0.25, 0.038),
        (0.77, 0.22, 0.137),
    ],
    5.0: [
        (0.47, 0.38, 0.297), (0.13, 0.86, 0.128), (0.68, 0.02, 0.019),
        (0.34, 0.20, 0.146), (0.41, 0.47, 0.315), (0.53, 0.24, 0.212),
        (0.38, 0.33, 0.235), (0.31, 0.60, 0.280), (0.21, 0.97, 0.209),
        (0.07, 0.48, 0.063),
    ],
    18.0: [
        (0.87, 0.45, 0.449), (0.78, 0.44, 0.439), (0.60, 0.72, 0.593),
        (0.43, 0.57, 0.425), (0.26, 0.33, 0.246), (0.10, 0.90, 0.100),
        (0.86, 0.40, 0.399), (0.46, 0.62, 0.456), (0.05, 0.52, 0.049),
        (0.45, 0.04, 0.039),
    ],
}
