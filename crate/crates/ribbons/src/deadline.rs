use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// An optional wall-clock cutoff threaded through the long-running searches.
///
/// `Deadline::none()` never expires; `Deadline::after(d)` expires `d` from
/// now. Search loops call [`Deadline::check`] periodically and abort with
/// [`Error::Timeout`] once the cutoff has passed.
#[derive(Debug, Clone, Copy)]
pub struct Deadline(Option<Instant>);

impl Deadline {
    pub fn none() -> Self {
        Deadline(None)
    }

    pub fn after(budget: Duration) -> Self {
        Deadline(Some(Instant::now() + budget))
    }

    pub fn at(instant: Instant) -> Self {
        Deadline(Some(instant))
    }

    pub fn expired(&self) -> bool {
        match self.0 {
            Some(t) => Instant::now() >= t,
            None => false,
        }
    }

    pub fn check(&self) -> Result<()> {
        if self.expired() {
            Err(Error::Timeout)
        } else {
            Ok(())
        }
    }
}

impl Default for Deadline {
    fn default() -> Self {
        Deadline::none()
    }
}
