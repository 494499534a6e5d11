//! Outcome bookkeeping shared by every identity verifier.

use std::cell::Cell;
use std::fmt::Display;

use serde::Serialize;

use crate::chromatic::SymPoly;
use crate::qarith::QLaurent;

/// One violated identity instance, with both sides in canonical text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub identity: String,
    pub context: String,
    pub left: String,
    pub right: String,
}

/// Values that can be compared by a verifier. `corrupted` backs the fault
/// injection hook used to self-test the reporting path.
pub trait Checkable: PartialEq + Display {
    fn corrupted(&self) -> Self;
}

impl Checkable for QLaurent {
    fn corrupted(&self) -> Self {
        self + &QLaurent::one()
    }
}

impl Checkable for SymPoly {
    fn corrupted(&self) -> Self {
        self.with_corrupted_coefficient()
    }
}

thread_local! {
    static FAULT_ARMED: Cell<bool> = const { Cell::new(false) };
}

/// Arms a one-shot fault on the current thread: the next comparison recorded
/// by any report on this thread has its left side perturbed.
pub fn arm_fault_injection() {
    FAULT_ARMED.with(|f| f.set(true));
}

/// Clears a fault that was armed but never consumed.
pub fn disarm_fault_injection() {
    FAULT_ARMED.with(|f| f.set(false));
}

fn take_fault() -> bool {
    FAULT_ARMED.with(|f| f.replace(false))
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub checks: usize,
    pub failures: Vec<Failure>,
}

impl VerifyReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn check_eq<T: Checkable>(
        &mut self,
        identity: &str,
        context: impl Display,
        left: &T,
        right: &T,
    ) -> bool {
        self.checks += 1;
        let corrupted;
        let left = if take_fault() {
            corrupted = left.corrupted();
            &corrupted
        } else {
            left
        };
        if left == right {
            return true;
        }
        self.failures.push(Failure {
            identity: identity.to_string(),
            context: context.to_string(),
            left: left.to_string(),
            right: right.to_string(),
        });
        false
    }

    /// Records a predicate-style check (`holds == false` is a failure).
    pub fn check(
        &mut self,
        identity: &str,
        context: impl Display,
        holds: bool,
        detail: impl Display,
    ) {
        self.checks += 1;
        let holds = holds && !take_fault();
        if !holds {
            self.failures.push(Failure {
                identity: identity.to_string(),
                context: context.to_string(),
                left: detail.to_string(),
                right: "expected to hold".to_string(),
            });
        }
    }

    /// Records an error raised while evaluating an identity as a failure.
    pub fn record_error(&mut self, identity: &str, context: impl Display, err: impl Display) {
        self.checks += 1;
        self.failures.push(Failure {
            identity: identity.to_string(),
            context: context.to_string(),
            left: format!("error: {err}"),
            right: String::new(),
        });
    }

    pub fn merge(&mut self, other: VerifyReport) {
        self.checks += other.checks;
        self.failures.extend(other.failures);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn armed_fault_hits_exactly_one_check() {
        let mut r = VerifyReport::new();
        arm_fault_injection();
        assert!(!r.check_eq("id", "ctx", &QLaurent::one(), &QLaurent::one()));
        assert!(r.check_eq("id", "ctx", &QLaurent::one(), &QLaurent::one()));
        assert_eq!(r.checks, 2);
        assert_eq!(r.failures.len(), 1);
        assert_eq!(r.failures[0].left, "2");
        assert_eq!(r.failures[0].right, "1");
    }

    #[test]
    fn disarm_clears_pending_fault() {
        arm_fault_injection();
        disarm_fault_injection();
        let mut r = VerifyReport::new();
        r.check("id", "", true, "");
        assert!(r.passed());
    }
}
