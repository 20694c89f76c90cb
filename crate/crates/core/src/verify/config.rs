use serde::{Deserialize, Serialize};

use crate::rational::Rational;
use crate::Error;

/// Grid and sampling parameters for a verification run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub max_n: u64,
    pub max_m: u32,
    pub series_order: usize,
    pub lambda_samples: Vec<Rational>,
    pub random_seq_trials: u32,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            max_n: 25,
            max_m: 4,
            series_order: 32,
            lambda_samples: vec![
                Rational::zero(),
                Rational::one(),
                Rational::from_integer(-1),
                Rational::new(1, 2),
                Rational::new(-1, 3),
                Rational::from_integer(2),
            ],
            random_seq_trials: 50,
            seed: 42,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<(), Error> {
        let bad = |msg: String| Err(Error::InvalidArgument(msg));
        if self.max_n == 0 {
            return bad("max_n must be at least 1".into());
        }
        if self.max_m == 0 {
            return bad("max_m must be at least 1".into());
        }
        if (self.series_order as u64) < self.max_n {
            return bad(format!(
                "series_order ({}) must be at least max_n ({})",
                self.series_order, self.max_n
            ));
        }
        if self.lambda_samples.is_empty() {
            return bad("lambda_samples must not be empty".into());
        }
        Ok(())
    }
}
