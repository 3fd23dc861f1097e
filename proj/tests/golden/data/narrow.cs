1 : {7}
