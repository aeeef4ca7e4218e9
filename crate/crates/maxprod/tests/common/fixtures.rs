//! Frozen sup errors of `f(x) = x^2` on `[0,1]` (201-point grid, 8 midpoint
//! nodes per cell), produced once by the brute-force oracle.

#![allow(dead_code, clippy::excessive_precision)]

pub const NS: [u32; 5] = [5, 10, 20, 40, 80];

/// `(kernel, [error for each n in NS])`
pub const SQUARE_SUP_ERRORS: [(&str, [f64; 5]); 3] = [
    (
        "logistic",
        [
            3.23281250000000131e-1,
            1.80820312500000080e-1,
            9.52050781250000089e-2,
            4.39825195312498751e-2,
            2.19643798828125236e-2,
        ],
    ),
    (
        "tanh",
        [
            3.23281250000000020e-1,
            1.80820312499999969e-1,
            9.52050781249998979e-2,
            4.39825195312499861e-2,
            2.19643798828125236e-2,
        ],
    ),
    (
        "ramp",
        [
            3.23281250000000131e-1,
            1.80820312500000080e-1,
            9.52050781250000089e-2,
            4.39825195312499861e-2,
            2.19643798828124126e-2,
        ],
    ),
];

pub const FIXTURE_TOLERANCE: f64 = 1e-10;
