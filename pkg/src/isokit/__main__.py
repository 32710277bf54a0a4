from isokit.cli import main

main()
