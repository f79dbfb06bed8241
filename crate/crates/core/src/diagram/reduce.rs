use super::{Curve, Diagram, DiagramError};

impl Diagram {
    pub fn bigon_faces(&self) -> impl Iterator<Item = usize> + '_ {
        self.faces()
            .iter()
            .enumerate()
            .filter(|(_, f)| f.degree() == 2)
            .map(|(i, _)| i)
    }

    /// Remove bigons until none is left, smallest face id first.
    pub fn reduce_bigons(&self) -> Result<Diagram, DiagramError> {
        self.reduce_bigons_counted().map(|(d, _)| d)
    }

    /// As [`Diagram::reduce_bigons`], also returning the number of bigons removed.
    pub fn reduce_bigons_counted(&self) -> Result<(Diagram, usize), DiagramError> {
        let mut current = self.clone();
        let mut steps = 0;
        loop {
            let Some(face) = current.bigon_faces().next() else {
                break;
            };
            current = current.remove_bigon(face)?;
            steps += 1;
        }
        Ok((current, steps))
    }

    /// Push the A-arc of a bigon across it: both corner crossings disappear and the
    /// four strands reconnect.
    fn remove_bigon(&self, face: usize) -> Result<Diagram, DiagramError> {
        let darts = &self.faces()[face].darts;
        debug_assert_eq!(darts.len(), 2);
        let x = darts[0].crossing();
        let y = darts[1].crossing();
        debug_assert_ne!(x, y, "bigon corners are distinct crossings");
        let keep: Vec<usize> = (0..self.crossing_count())
            .filter(|&z| z != x && z != y)
            .collect();
        let mut new_index = vec![usize::MAX; self.crossing_count()];
        for (i, &z) in keep.iter().enumerate() {
            new_index[z] = i;
        }
        let strip = |cs: &[Curve]| -> Result<Vec<Curve>, DiagramError> {
            cs.iter()
                .map(|c| {
                    let word: Vec<usize> = c
                        .word
                        .iter()
                        .filter(|&&z| z != x && z != y)
                        .map(|&z| new_index[z])
                        .collect();
                    if word.is_empty() {
                        Err(DiagramError::CurveEliminated(c.name.clone()))
                    } else {
                        Ok(Curve {
                            name: c.name.clone(),
                            word,
                        })
                    }
                })
                .collect()
        };
        let a = strip(&self.a)?;
        let b = strip(&self.b)?;
        let names = keep.iter().map(|&z| self.crossings[z].name.clone()).collect();
        let signs = keep.iter().map(|&z| self.crossings[z].sign).collect();
        let reduced = Diagram::from_parts(a, b, names, signs)?;
        // Removing a bigon keeps the surface unless the remaining curves no
        // longer cut it into disks.
        if reduced.genus() != self.genus() {
            return Err(DiagramError::NotFilling {
                before: self.genus(),
                after: reduced.genus(),
            });
        }
        Ok(reduced)
    }
}
