/// A named, runtime-selectable implementation.
pub trait Strategy: Send + Sync {
    fn name(&self) -> &'static str;

    fn summary(&self) -> &'static str {
        ""
    }
}

/// Strategies of one kind, looked up by name. Registration order is kept so
/// listings and "run everything" loops are deterministic.
pub struct Registry<T: ?Sized + Strategy> {
    entries: Vec<Box<T>>,
}

impl<T: ?Sized + Strategy> Registry<T> {
    pub fn new() -> Self {
        Registry {
            entries: Vec::new(),
        }
    }

    /// Adds a strategy. Panics on a duplicate name, which is a wiring bug.
    pub fn register(&mut self, entry: Box<T>) -> &mut Self {
        assert!(
            self.get(entry.name()).is_none(),
            "duplicate strategy name {:?}",
            entry.name()
        );
        self.entries.push(entry);
        self
    }

    pub fn get(&self, name: &str) -> Option<&T> {
        self.entries.iter().find(|e| e.name() == name).map(|e| &**e)
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|e| e.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &T> {
        self.entries.iter().map(|e| &**e)
    }
}

impl<T: ?Sized + Strategy> Default for Registry<T> {
    fn default() -> Self {
        Self::new()
    }
}
