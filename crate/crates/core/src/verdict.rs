/// Outcome of an exact check: either it holds, or the first counterexample found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict<V> {
    Ok,
    Violation(V),
}

impl<V> Verdict<V> {
    pub fn is_ok(&self) -> bool {
        matches!(self, Verdict::Ok)
    }

    pub fn violation(&self) -> Option<&V> {
        match self {
            Verdict::Ok => None,
            Verdict::Violation(v) => Some(v),
        }
    }

    pub fn into_violation(self) -> Option<V> {
        match self {
            Verdict::Ok => None,
            Verdict::Violation(v) => Some(v),
        }
    }
}

impl<V> From<Option<V>> for Verdict<V> {
    fn from(v: Option<V>) -> Self {
        match v {
            None => Verdict::Ok,
            Some(v) => Verdict::Violation(v),
        }
    }
}
