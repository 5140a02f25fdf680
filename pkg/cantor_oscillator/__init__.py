# Cantor oscillator package
