# cfklab
# Correction terms of zero-surgeries from knot Floer complexes
