from cantor_oscillator.main import main

main()
