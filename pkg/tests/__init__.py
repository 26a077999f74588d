# Empty init file 