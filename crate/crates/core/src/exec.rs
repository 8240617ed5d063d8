//! Sequential or data-parallel execution of independent search tasks.

/// How table searches map over their candidate lists. Results always come
/// back in input order, so both strategies produce identical output.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        Execution::from_env()
    }
}

impl Execution {
    /// Parallel when the `parallel` feature is enabled, unless
    /// `WPC_NO_PARALLEL` is set to something other than `0` or empty.
    pub fn from_env() -> Self {
        let disabled = std::env::var("WPC_NO_PARALLEL")
            .map(|v| !v.is_empty() && v != "0")
            .unwrap_or(false);
        if cfg!(feature = "parallel") && !disabled {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }

    pub fn map<T, R, F>(self, items: Vec<T>, f: F) -> Vec<R>
    where
        T: Send,
        R: Send,
        F: Fn(T) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => {
                use rayon::prelude::*;
                items.into_par_iter().map(f).collect()
            }
            _ => items.into_iter().map(f).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree_and_keep_order() {
        let input: Vec<u64> = (0..1000).collect();
        let seq = Execution::Sequential.map(input.clone(), |x| x * x);
        let par = Execution::Parallel.map(input, |x| x * x);
        assert_eq!(seq, par);
        assert_eq!(seq[31], 961);
    }
}
