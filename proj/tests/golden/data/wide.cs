1 : {7, 8}
