"""2-term homotopy Lie triple systems, their morphisms, classifications and
the equivalence with Lie triple 2-systems."""
