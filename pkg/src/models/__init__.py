# Domain value types: trits, expressions, truth tables, rules, netlists and cells
