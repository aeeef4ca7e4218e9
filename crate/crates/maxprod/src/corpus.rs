//! Built-in univariate test functions.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TestFunction {
    /// `x^2`
    Square,
    /// `sin(2 pi x)`; takes negative values on `[0, 1]`.
    Sine,
    /// `|x - 1/2|`
    Abs,
    /// 0 below `1/2`, 1 from `1/2` on.
    Step,
}

impl TestFunction {
    pub const ALL: [TestFunction; 4] = [
        TestFunction::Square,
        TestFunction::Sine,
        TestFunction::Abs,
        TestFunction::Step,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TestFunction::Square => "square",
            TestFunction::Sine => "sine",
            TestFunction::Abs => "abs",
            TestFunction::Step => "step",
        }
    }

    pub fn eval(self, x: f64) -> f64 {
        match self {
            TestFunction::Square => x * x,
            TestFunction::Sine => (2.0 * PI * x).sin(),
            TestFunction::Abs => (x - 0.5).abs(),
            TestFunction::Step => {
                if x < 0.5 {
                    0.0
                } else {
                    1.0
                }
            }
        }
    }

    pub fn is_continuous(self) -> bool {
        !matches!(self, TestFunction::Step)
    }
}

impl fmt::Display for TestFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TestFunction {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TestFunction::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| {
                format!("unknown function {s:?}; expected one of square, sine, abs, step")
            })
    }
}
