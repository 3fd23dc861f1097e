w : {w*2}
5 : {6}
