//! Named verification checks and the report type returned by the verify ops.

/// One named comparison between a computed value and a reference value.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub computed: f64,
    pub reference: f64,
    pub gap: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl Check {
    /// Two-sided check: passes when |computed - reference| <= tolerance.
    pub fn within(name: impl Into<String>, computed: f64, reference: f64, tolerance: f64) -> Self {
        let gap = computed - reference;
        Check {
            name: name.into(),
            computed,
            reference,
            gap,
            tolerance,
            pass: gap.abs() <= tolerance,
        }
    }

    /// One-sided check: passes when computed >= reference - tolerance.
    pub fn at_least(
        name: impl Into<String>,
        computed: f64,
        reference: f64,
        tolerance: f64,
    ) -> Self {
        let gap = computed - reference;
        Check {
            name: name.into(),
            computed,
            reference,
            gap,
            tolerance,
            pass: gap >= -tolerance,
        }
    }
}

/// Outcome of one verification operation: a list of checks plus, where it is
/// meaningful, whether the configuration realizes the equality case.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
    pub equality: Option<bool>,
}

impl VerificationReport {
    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    /// True when every check passed (vacuously true for an empty report).
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failing(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}
