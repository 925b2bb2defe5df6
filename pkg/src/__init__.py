# Toric Schubert varieties in Grassmannians: classification, fans and Fano checks
